#include "mszego/cli.hpp"

int main(int argc, char** argv) { return mszego::run_cli(argc, argv); }
