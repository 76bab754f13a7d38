#include "ioncav/cli.hpp"

int main(int argc, char** argv)
{
    return ioncav::cli::run(argc, argv);
}
