#include "robosim/harness.hpp"

int main(int argc, char** argv) {
    return robosim::cli_main(argc, argv);
}
