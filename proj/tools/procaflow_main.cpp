#include "procaflow/cli.hpp"

int main(int argc, char** argv) { return procaflow::run_cli(argc, argv); }
