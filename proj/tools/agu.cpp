#include "agu/cli.hpp"

int main(int argc, char** argv) { return agu::run(argc, argv); }
