#include "detinv/cli.hpp"

int main(int argc, char** argv) { return detinv::cli::run(argc, argv); }
