#include "caykit/cli.hpp"

int main(int argc, char** argv) { return caykit::cli::run(argc, argv); }
