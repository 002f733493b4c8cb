#include "sp1kepler/commands.hpp"

int main(int argc, char** argv) { return sp1kepler::cli::run(argc, argv); }
