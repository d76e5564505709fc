#include "adinv/cli.hpp"

int main(int argc, char** argv) { return adinv::run(argc, argv); }
