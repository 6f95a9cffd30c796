#include "qblob/cli.hpp"

int main(int argc, char** argv) { return qblob::run_cli(argc, argv); }
