#include "wseq/cli.hpp"

int main(int argc, char** argv) { return wseq::cli_main(argc, argv); }
