#include "hend/cli.hpp"

int main(int argc, char** argv) { return hend::cli_main(argc, argv); }
