#include "envwit/cli.hpp"

int main(int argc, char** argv) { return envwit::cli::run(argc, argv); }
