#include "hspline/harness.hpp"

int main(int argc, char** argv) { return hspline::cli_main(argc, argv); }
