#include <lightscope/cli.hpp>

int main(int argc, char** argv) { return lightscope::cli::run(argc, argv); }
