#include "gp/harness.hpp"

int main(int argc, char** argv) { return gp::harness::cli_main(argc, argv); }
