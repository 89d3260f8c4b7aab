#include "valleyforge/cli.hpp"

int main(int argc, char** argv) { return valleyforge::cli::run(argc, argv); }
