#include "snakealg/cli.hpp"

int main(int argc, char** argv) { return snakealg::cli::run(argc, argv); }
