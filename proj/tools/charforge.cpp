#include "charforge/cli.hpp"

int main(int argc, char** argv) { return charforge::cli::run(argc, argv); }
