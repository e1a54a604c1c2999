#include "cli.hpp"

int main(int argc, char** argv) { return divnet::cli::main_entry(argc, argv); }
