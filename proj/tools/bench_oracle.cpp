/*
   Copyright 2026 the zprconv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <chrono>
#include <cstdio>
#include <functional>

#include "zprconv/oracle.hpp"
#include "zprconv/randomgen.hpp"

namespace {

using namespace zprconv;

double best_of(int reps, const std::function<void()>& body) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        body();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-34s %10.2f ms %10.2f ms %7.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, agree ? "results agree" : "MISMATCH");
}

}  // namespace

int main() {
    std::mt19937_64 rng(12345);
    Ring z4 = make_ring(2, 2);

    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        PolyMatrix g = random_poly_matrix(rng, z4, 8, 8, 0);
        CodewordSet a = enumerate_block_code_serial(g);
        CodewordSet b = enumerate_block_code(g);
        double s = best_of(3, [&] { enumerate_block_code_serial(g); });
        double p = best_of(3, [&] { enumerate_block_code(g); });
        report("enumerate_block_code 4^8", s, p, a == b);
    }

    {
        PolyMatrix g = random_poly_matrix(rng, z4, 3, 6, 0);
        CodewordSet a = brute_dual_block_serial(g);
        CodewordSet b = brute_dual_block(g);
        double s = best_of(3, [&] { brute_dual_block_serial(g); });
        double p = best_of(3, [&] { brute_dual_block(g); });
        report("brute_dual_block 4^6 x 4^3", s, p, a == b);
    }

    {
        PSequence gens;
        for (int j = 0; j < 4; ++j) gens.push_back(random_pvector(rng, z4, 3, 1));
        auto a = brute_p_span_serial(gens, 2);
        auto b = brute_p_span(gens, 2);
        double s = best_of(3, [&] { brute_p_span_serial(gens, 2); });
        double p = best_of(3, [&] { brute_p_span(gens, 2); });
        report("brute_p_span 2^12 digit tuples", s, p, a == b);
    }

    return 0;
}
