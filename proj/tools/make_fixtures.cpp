// Writes synthetic b-files into a directory. Values come from closed forms,
// or from the Moebius sum over the intersection lattice when no closed form
// exists, never from brute-force placement counting.
#include "riderlab/cli_io.hpp"
#include "riderlab/counting.hpp"
#include "riderlab/quasipoly.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace riderlab;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_fixtures DIR\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    for (const auto& m : oeis_table()) {
        const PieceSpec piece = parse_piece(m.family);
        const auto f = formula_for_piece(piece, m.q);
        const bool mobius = !f && m.q <= 3;
        if (!f && !mobius && m.q != 1) continue;
        const long k_max = mobius ? 20 : 30;
        OeisEntry e;
        e.id = m.id;
        e.offset = 1;
        for (long k = 1; k <= k_max; ++k) {
            const long n = k + m.shift;
            BigInt v;
            if (m.q == 1) v = BigInt(n) * n;
            else if (f) v = formula_eval(f->first, m.q, n, f->second).numerator();
            else v = count_via_mobius(piece, m.q, static_cast<unsigned>(n)) / factorial(m.q);  // labelled -> unlabelled
            e.values.emplace_back(k, v);
        }
        std::string text = "# synthetic fixture, not downloaded\n" + serialize_bfile(e);
        std::ofstream(dir / ("b" + m.id.substr(1) + ".txt"), std::ios::binary) << text;
        std::cout << m.id << " " << m.family << " q=" << m.q << (mobius ? " mobius" : "") << "\n";
    }
}
