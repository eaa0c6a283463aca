#include "sppde/run_config.hpp"

int main(int argc, char** argv) { return sppde::run_cli(argc, argv); }
