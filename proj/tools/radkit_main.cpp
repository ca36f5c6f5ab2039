#include "radkit/cli.hpp"

int main(int argc, char** argv) { return radkit::cli::run_main(argc, argv); }
