#include "bbsubord/cli.hpp"

int main(int argc, char** argv)
{
    return bbsubord::run_cli(argc, argv);
}
