#include <iostream>

#include "phit/cli.hpp"

int main(int argc, char** argv) {
  phit::RunConfig cfg;
  try {
    cfg = phit::parse_args(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const phit::HelpRequested& h) {
    std::cout << h.text;
    return 0;
  } catch (const phit::UsageError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  try {
    return phit::run_cli(cfg);
  } catch (const phit::UsageError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
