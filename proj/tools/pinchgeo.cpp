#include <iostream>

#include "pinchgeo/app/commands.hpp"

int main(int argc, char** argv) { return pinchgeo::app::run_cli(argc, argv, std::cout, std::cerr); }
