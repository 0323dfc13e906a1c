#include "horikawa/cli.hpp"

int main(int argc, char** argv) { return horikawa::cli::run(argc, argv); }
