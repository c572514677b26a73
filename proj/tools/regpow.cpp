#include "regpow/cli.hpp"

int main(int argc, char** argv) { return regpow::cli::run(argc, argv); }
