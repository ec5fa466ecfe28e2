#include "stardense/cli.hpp"

int main(int argc, char** argv) { return stardense::cli::run(argc, argv); }
