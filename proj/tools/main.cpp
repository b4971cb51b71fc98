#include <flexmeadow/cli.hpp>

int main(int argc, char** argv) { return flexmeadow::run_cli(argc, argv); }
