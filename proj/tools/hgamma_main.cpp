#include "hgamma/cli.hpp"

int main(int argc, char** argv) { return hgamma::run_cli(argc, argv); }
