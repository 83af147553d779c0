#include "knotslice/cli.hpp"

int main(int argc, char** argv) { return knotslice::cli::run(argc, argv); }
