#include "bhh/cli/runner.hpp"

int main(int argc, char** argv) { return bhh::cli_main(argc, argv); }
