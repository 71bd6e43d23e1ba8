#include <iostream>

#include "pathnoise/cli.hpp"
#include "pathnoise/errors.hpp"

int main(int argc, char** argv) {
  using namespace pathnoise;
  try {
    const auto cfg = cli::parse_args(argc, argv, std::cout);
    if (!cfg) return cli::kOk;
    return cli::run(*cfg, std::cerr);
  } catch (const ValidationError& e) {
    std::cerr << "error code=" << cli::kValidation << " kind=validation message=\"" << e.what()
              << "\"\n";
    return cli::kValidation;
  }
}
