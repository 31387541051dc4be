#include "subraid/cli/app.hpp"

int main(int argc, char** argv) { return subraid::cli::run_cli(argc, argv); }
