#include "vinberg_cli/cli.hpp"

int main(int argc, char** argv) { return vinberg::cli::main_entry(argc, argv); }
