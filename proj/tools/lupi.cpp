#include "lupi/cli.hpp"

int main(int argc, char** argv) { return lupi::cli::main(argc, argv); }
