#include "lamspec/cli.hpp"

int main(int argc, char** argv) { return lamspec::cli::cli_main(argc, argv); }
