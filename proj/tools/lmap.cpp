#include "lmap/cli.hpp"

int main(int argc, char** argv) { return lmap::cli::run(argc, argv); }
