#include "qschur/cli.hpp"

int main(int argc, char** argv) { return qschur::cli_main(argc, argv); }
