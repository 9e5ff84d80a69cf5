#include "kbforge/cli.hpp"

int main(int argc, char** argv) {
    return kbforge::run_cli(argc, argv);
}
