#include "agss/cli.hpp"

int main(int argc, char** argv) { return agss::cli::run(argc, argv); }
