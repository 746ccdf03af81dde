#include <cstdio>
#include <iostream>

#include "common.hpp"
#include "tg/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"tgim - influence maximization on temporal graphs with a fixed source"};
  app.require_subcommand(1);

  setup_generate(app);
  setup_simulate(app);
  setup_solve(app);
  setup_verify(app);
  setup_bench(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const CheckFailed&) {
    return kExitCheckFailed;
  } catch (const tg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
