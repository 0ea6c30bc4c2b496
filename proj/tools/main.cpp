#include "dqc1/cli.hpp"

int main(int argc, char** argv) { return dqc1::cli::run(argc, argv); }
