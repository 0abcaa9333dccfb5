#include "hvec/cli.hpp"

int main(int argc, char** argv) { return hvec::run_command(argc, argv); }
