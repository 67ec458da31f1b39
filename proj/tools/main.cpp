#include "cli.hpp"

int main(int argc, char** argv) { return hyp::cli::main_entry(argc, argv); }
