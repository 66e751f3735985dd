#include "cuplength/cli.hpp"

int main(int argc, char** argv) { return cuplength::cli_main(argc, argv); }
