#include "korbit/cli.hpp"

int main(int argc, char** argv) { return korbit::cli::run(argc, argv); }
