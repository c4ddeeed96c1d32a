#include "cgh/cli.hpp"

int main(int argc, char** argv) { return cgh::cli::main_entry(argc, argv); }
