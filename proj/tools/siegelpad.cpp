#include <iostream>
#include <string>
#include <vector>

#include "siegel/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) {
        std::cerr << "usage: siegelpad <group> <verb> [flags]\n"
                  << "  cosets verify --n <n> --parts <n1,..,nd> --r <r> --p <p> --l <l>\n"
                  << "  qexp up|check-stratum|project --in <file> [--i <block>] [--r <r>] [--max-steps <s>]\n"
                  << "  euler ep|imp|ap|classify --in <file> [--s <s>] [--chi-file <file>]\n"
                  << "  lseries lvalue|gauss [--k <k>] [--chi-file <file>] [--removed <q1,q2>]\n"
                  << "  eis coeff|restrict|check-congruence --spec <file> --beta <file> ...\n"
                  << "  family l-invariant|derivative-check --a-n <file> --a-nm1 <file> | --u <file> --g <file>\n"
                  << "global flags: --json --seed <s> --budget <b> --no-time\n";
        return 2;
    }
    return siegel::dispatch(args, std::cout);
}
