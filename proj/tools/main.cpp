#include "cli.hpp"

int main(int argc, char** argv) {
    return primewalk::cli::run(argc, argv);
}
