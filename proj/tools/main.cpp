#include "zipfsignal/cli.hpp"

int main(int argc, char** argv) { return zipfsignal::cli::run_cli(argc, argv); }
