#pragma once

#include "crn/matrix.hpp"
#include "crn/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crn {

struct Species {
    int index;         // position in the network's species list
    std::string name;  // unique within a network
};

// A complex: formal non-negative integer combination of species, stored as
// (species index, coefficient) pairs sorted by index, coefficients > 0.
// The zero complex is the empty list. Complexes are multisets: "A + B" and
// "B + A" are the same complex.
class Complex {
  public:
    Complex() = default;

    void add(int species, int coeff);
    int coeff(int species) const;
    bool is_zero() const { return terms_.empty(); }

    const std::vector<std::pair<int, int>>& terms() const { return terms_; }

    // True when the complex is a single species with coefficient one.
    bool is_single(int species) const {
        return terms_.size() == 1 && terms_[0].first == species && terms_[0].second == 1;
    }

    bool operator==(const Complex&) const = default;
    bool operator<(const Complex& o) const { return terms_ < o.terms_; }

  private:
    std::vector<std::pair<int, int>> terms_;
};

enum class ReactionOrigin { Declared, AddedOutflow };

struct Reaction {
    Complex reactant;
    Complex product;  // reactant != product always holds
    std::string rate_label;
    ReactionOrigin origin = ReactionOrigin::Declared;
};

class Network {
  public:
    Network() = default;
    Network(std::vector<Species> species, std::vector<Reaction> reactions)
        : species_(std::move(species)), reactions_(std::move(reactions)) {}

    int species_count() const { return static_cast<int>(species_.size()); }
    int reaction_count() const { return static_cast<int>(reactions_.size()); }

    const std::vector<Species>& species() const { return species_; }
    const std::vector<Reaction>& reactions() const { return reactions_; }
    const Species& species_at(int i) const { return species_[i]; }
    const Reaction& reaction_at(int i) const { return reactions_[i]; }

    // True when the species outflow reaction S_i -> 0 is declared.
    bool has_outflow(int species) const;

    // Ascending indices of species without an outflow reaction.
    std::vector<int> missing_outflows() const;

  private:
    std::vector<Species> species_;
    std::vector<Reaction> reactions_;
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line, int column);
    int line;
    int column;
};

// Parses the line-oriented reaction format (see README). Species appear in
// first-mention order; "<->" desugars into two reactions; unlabeled
// reactions are assigned k1..km by final reaction position.
Network parse_network(std::string_view text);
Network parse_network_file(const std::string& path);

// n x m integer matrix, column j = product_j - reactant_j.
QMat stoichiometric_matrix(const Network& net);

// n x m integer matrix, column j = reactant_j.
QMat reactant_matrix(const Network& net);

// n x |R| column selection of reactant complexes for the given reactions.
QMat reactant_matrix_for(const Network& net, std::span<const int> reactions);

// n x |R| column selection of reactant - product vectors (the orientation
// used by the subset criteria; the negative of the stoichiometric columns).
QMat reaction_matrix_for(const Network& net, std::span<const int> reactions);

// N plus an outflow reaction S_i -> 0 for every species lacking one.
// Added reactions get the reserved label "out:<name>" and origin
// AddedOutflow. Idempotent.
Network fully_open_closure(const Network& net);

// Deletes the given species from every complex; reactions whose two
// complexes become equal are dropped, duplicates are merged keeping the
// first label. Surviving species keep their relative order.
Network project_network(const Network& net, std::span<const int> removed_species);

enum class OpennessClass { FullyOpen, Open, Closed };

struct Openness {
    OpennessClass cls;
    int s;  // dim of the stoichiometric subspace
    int d;  // n - s
};

Openness classify_openness(const Network& net);

const char* openness_name(OpennessClass c);

// Renders a complex with the network's species names, e.g. "S1 + 2 S3".
std::string render_complex(const Network& net, const Complex& c);

}  // namespace crn
