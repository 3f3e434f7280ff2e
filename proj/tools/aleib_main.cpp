#include "aleib/cli.hpp"

int main(int argc, char** argv) { return aleib::run(argc, argv); }
