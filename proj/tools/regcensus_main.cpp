#include "regcensus/cli.hpp"

int main(int argc, char** argv) { return regcensus::main_entry(argc, argv); }
