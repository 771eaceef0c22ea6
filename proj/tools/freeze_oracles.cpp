// Regenerates tests/golden/oracle_corpus.txt from the brute-force oracles.
#include <sr/enumerate.hpp>
#include <sr/experiments.hpp>
#include <sr/matching.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char ** argv)
{
    if (argc != 2) {
        std::cerr << "usage: freeze_oracles OUT\n";
        return 2;
    }
    std::ofstream out(argv[1]);
    out << "# n seed, then brute-force stable partitions and stable matchings\n";
    for (int n : {4, 5, 6, 7, 8})
        for (int k = 0; k < 40; ++k) {
            auto seed = sr::instance_seed(2024, n, k);
            auto inst = sr::random_instance(n, sr::Seed{seed});
            out << "instance " << n << ' ' << seed << '\n';
            for (const auto & p : sr::brute_force_partitions(inst))
                out << "partition " << p.to_string() << '\n';
            for (const auto & m : sr::brute_force_matchings(inst))
                out << "matching " << m.to_string() << '\n';
            out << "end\n";
        }
    return 0;
}
