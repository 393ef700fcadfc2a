#include "fzc/cli_io.hpp"

int main(int argc, char** argv) { return fzc::run_cli(argc, argv); }
