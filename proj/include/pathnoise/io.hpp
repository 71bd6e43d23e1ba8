#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "pathnoise/band_estimator.hpp"
#include "pathnoise/lbl_operator.hpp"
#include "pathnoise/multistep.hpp"
#include "pathnoise/predictor.hpp"
#include "pathnoise/two_sided.hpp"
#include "pathnoise/types.hpp"

namespace pathnoise::io {

using Json = nlohmann::ordered_json;

/// CSV with header `t,re,im` (im optional). Rows in any order; duplicate t is
/// rejected; gaps inside the covered range are zeros.
TwoSidedSequence parse_sequence_csv(std::istream& in);
TwoSidedSequence read_sequence_csv(const std::filesystem::path& path);

/// Samples must satisfy t <= 0; the horizon spans from the oldest row to t = 0.
OneSidedSequence read_one_sided_csv(const std::filesystem::path& path);

/// %.17g formatting.
std::string format_double(double v);

void write_sequence_csv(std::ostream& out, const TwoSidedSequence& x);
void write_sequence_csv(const std::filesystem::path& path, const TwoSidedSequence& x);
void write_spectrum_csv(std::ostream& out, const SpectrumGrid& spectrum);
void write_spectrum_csv(const std::filesystem::path& path, const SpectrumGrid& spectrum);
void write_json(const std::filesystem::path& path, const Json& j);

Json to_json(const SigmaReport& r);
Json to_json(const RecoveryReport& r);
Json to_json(const ProjectorConfig& cfg);
ProjectorConfig projector_config_from_json(const Json& j);
Json to_json(const BandEstimate& e);
Json to_json(const FirPredictor& p);
Json to_json(const MultistepResult& r);

}  // namespace pathnoise::io
