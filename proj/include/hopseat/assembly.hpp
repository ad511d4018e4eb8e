#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hopseat/conditions.hpp"
#include "hopseat/model.hpp"

namespace hopseat {

// Simple graph on couple indices 0..order-1.
struct SimpleGraph {
    int order = 0;
    std::vector<std::pair<int, int>> edges;

    static SimpleGraph complete(int n);
    // K_{parts[size]} with vertex v in part v mod parts.
    static SimpleGraph equipartite_residues(int n, int parts);
};

struct HOPDecomposition {
    int n = 0;
    int modulus = 0;
    bool has_infinity = false;
    std::vector<Piece> pieces;
};

// Everything that keeps d from being an HOP decomposition of 4G (G defaults to K_n).
std::vector<std::string> hop_problems(const HOPDecomposition& d);
std::vector<std::string> hop_problems(const HOPDecomposition& d, const SimpleGraph& g);
void require_hop_decomposition(const HOPDecomposition& d, const SimpleGraph& g);

std::array<ColoredCycle, 4> four_copy_colorings(const std::vector<Vertex>& cycle);
std::array<ColoredCycle, 2> lift_two_colored(const ColoredCycle& cycle);

// Plain-piece edge multiset must equal E(g); throws NotADecomposition otherwise.
void require_plain_decomposition(const std::vector<Piece>& pieces, const SimpleGraph& g);

HOPDecomposition assemble_combination(const std::vector<Piece>& pieces, const SimpleGraph& g);

// Replaces the first `designated` cycles of each piece by their two alternating matchings.
Piece split_even_cycles(const Piece& p, int designated);
std::vector<Piece> split_even_cycles(const std::vector<Piece>& pieces, int designated);

std::set<int> all_differences(int modulus);
std::vector<Piece> develop_full_rotation(const std::vector<Piece>& pieces, int modulus);
std::vector<Piece> develop_full_rotation(const std::vector<Piece>& pieces, int modulus, const std::set<int>& required);

HOPDecomposition develop_half_rotation(const std::vector<Piece>& pieces, Flavor flavor, int n);

// Puts a copy of `inner` (labeled on b couples) on every residue class mod n/b and adds `outer`.
HOPDecomposition compose_blockwise(int n, int b, const HOPDecomposition& inner, const HOPDecomposition& outer);

// 2-cycle on a,b colored pink+blue or as two opposite black arcs.
ColoredCycle pink_blue_two_cycle(const Vertex& a, const Vertex& b);
ColoredCycle black_two_cycle(const Vertex& a, const Vertex& b);

}  // namespace hopseat
