#include "idom/harness.hpp"

int main(int argc, char** argv) {
    return idom::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
