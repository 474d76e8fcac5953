#include "quasigray/cli.hpp"

int main(int argc, char** argv) { return quasigray::run_cli(argc, argv); }
