#pragma once

// Mechanical checks of slenderness statements on a representable class of
// homomorphisms: maps out of the sequence carriers that factor through a
// finite coordinate window. Homomorphisms that do not factor through a
// window are outside what this harness can express and are not covered.

#include "gengroup/core.hpp"
#include "gengroup/hom.hpp"
#include "gengroup/integer.hpp"
#include "gengroup/rees.hpp"
#include "gengroup/seqgg.hpp"
#include "gengroup/slender.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace gengroup {

using IndexSet = std::vector<SeqIndex>; // ascending

/// h : additive product -> Z^k, h(x) = matrix * (x_1, ..., x_cols).
/// Well-formed instances have matrix.cols() == window; corrupted fixtures
/// may declare a window narrower than the matrix.
struct RepHom {
    int window = 1;
    IntMatrix matrix;

    int target_rank() const { return static_cast<int>(matrix.rows()); }
    bool well_formed() const { return window >= 1 && matrix.cols() == window; }
};

IntVector eval_rep(const RepHom& h, const FinSeq& x);

/// 1-based positions m <= window whose column of the matrix is nonzero.
IndexSet declared_support(const RepHom& h);

/// {n <= bound : h(i_n) != 0}; the target is abelian so e(.) = 0.
IndexSet offdiagonal_set(const RepHom& h, SeqIndex bound);

/// Maps out of the generalized product into Z^k built from a RepHom.
struct RepGGHom {
    enum class Rule {
        ThroughProjection, // x -> h(P x), P keeps positions 0 mod 3
        ThroughG,          // x -> h(g x)
        Direct,            // x -> h(x); not a homomorphism unless h only sees positions 0 mod 3
    };
    RepHom base;
    Rule rule = Rule::ThroughProjection;

    /// Declared window of the composite.
    int window() const { return rule == Rule::ThroughG ? 3 * base.window : base.window; }
};

IntVector eval(const RepGGHom& h, const FinSeq& x);
IndexSet offdiagonal_set(const RepGGHom& h, SeqIndex bound);

/// Representable homomorphisms from the generalized product into a finite
/// generalized group, which the caller keeps alongside the probe.
struct FiniteProbe {
    enum class Kind {
        ComponentPower, // x -> a^(c . P x) inside G_{e(a)}
        LeftBand,       // x -> band[x_1 mod |band|], band a left-zero subsemigroup
        RightBand,      // x -> band[x_2 mod |band|], band a right-zero subsemigroup
    };
    Kind kind = Kind::ComponentPower;
    std::vector<Element> elements; // {a} or the band
    RepHom exponent;               // 1 x window, ComponentPower only

    int window() const { return kind == Kind::ComponentPower ? exponent.window : 2; }
};

/// a^m for any integer m, with a^0 = e(a).
Element power(const FiniteGenGroup& g, Element a, const Integer& m);

Element eval(const FiniteGenGroup& target, const FiniteProbe& p, const FinSeq& x);
IndexSet offdiagonal_set(const FiniteGenGroup& target, const FiniteProbe& p, SeqIndex bound);

/// A deterministic probe family: component powers at every element plus the
/// maximal left and right bands through each idempotent.
std::vector<FiniteProbe> standard_probes(const FiniteGenGroup& target, int window, std::uint64_t seed);

enum class ClaimStatus { Verified, Falsified, Skipped };
std::string to_string(ClaimStatus s);

struct ClaimReport {
    std::string id;
    ClaimStatus status = ClaimStatus::Verified;
    std::string witness; // required when falsified
    std::map<std::string, std::string> parameters;
    std::string note;
};

struct SampleConfig {
    std::uint64_t seed = 0;
    int samples = 1000;
    int coord_range = 9;
};

/// Random finitely supported sequence with support inside 1..max_index.
FinSeq random_finseq(std::mt19937_64& rng, SeqIndex max_index, int coord_range);

/// Random RepHom of the given window and rank with entries in [-range, range];
/// roughly a third of the columns are zero.
RepHom random_rep_hom(std::mt19937_64& rng, int window, int rank, int range = 3);

// Claim identifiers.
inline constexpr const char* kAbelianImpliesGg = "abelian-slender-implies-gg-slender";
inline constexpr const char* kGgImpliesAbelian = "gg-slender-implies-abelian-slender";
inline constexpr const char* kComponentSlender = "component-slender";
inline constexpr const char* kSubgroupSlender = "subgroup-slender";
inline constexpr const char* kSurjectiveImage = "surjective-image-slender";
inline constexpr const char* kDirectProduct = "direct-product-slender";
inline constexpr const char* kFiniteSubproduct = "finite-subproduct";
inline constexpr const char* kProductNotSlender = "gg-product-not-slender";
inline constexpr const char* kWindowProperty = "window-property";
inline constexpr const char* kHomPreservation = "hom-preservation";
inline constexpr const char* kLocalIdentityLaws = "local-identity-laws";
inline constexpr const char* kReesIdempotents = "rees-idempotents";
inline constexpr const char* kSnfCertificates = "snf-certificates";

/// Any generalized-group homomorphism into an abelian group kills i_n for
/// n != 0 mod 3; checked on h together with h o f being additive and having
/// the same off-diagonal set inside the window.
ClaimReport check_abelian_implies_gg(const RepGGHom& h, SeqIndex bound, const SampleConfig& cfg);
ClaimReport check_abelian_implies_gg(const RepHom& h, SeqIndex bound, const SampleConfig& cfg);

/// h o g is a generalized-group homomorphism with (h o g)(i_3m) = h(i_m) and
/// nonzero exactly at {3m : m in declared_support(h)}.
ClaimReport check_gg_implies_abelian(const RepHom& h, SeqIndex bound, const SampleConfig& cfg);

ClaimReport check_window_property(const RepHom& h, SeqIndex bound);

/// Skipped unless subset is a generalized subgroup.
ClaimReport check_subgroup_slender(const FiniteGenGroup& g, const std::vector<Element>& subset, int window,
                                   SeqIndex bound, const SampleConfig& cfg);

ClaimReport check_component_slender(const FiniteGenGroup& g, Element a, int window, SeqIndex bound,
                                    const SampleConfig& cfg);

class NotSurjective : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws NotSurjective. Probes target f.target().
ClaimReport check_surjective_image(const HomTable& f, const std::vector<FiniteProbe>& probes, SeqIndex bound,
                                   const SampleConfig& cfg);

/// At most four factors; an empty list is skipped.
ClaimReport check_direct_product(const std::vector<FiniteGenGroup>& factors, int window, SeqIndex bound,
                                 const SampleConfig& cfg);

ClaimReport check_finite_subproduct(const RepGGHom& h, SeqIndex bound, const SampleConfig& cfg);

ClaimReport check_product_not_slender(SeqIndex bound, const SampleConfig& cfg);

ClaimReport check_hom_preservation(const std::vector<HomTable>& maps);

ClaimReport check_local_identity_laws(const std::vector<CayleyTable>& tables);

/// table is supposed to be rees_build(spec).
ClaimReport check_rees_idempotents(const ReesSpec& spec, const FiniteGenGroup& table);

struct SnfCase {
    IntMatrix a;
    SnfResult<Integer> certificate;
};
ClaimReport check_snf_certificates(const std::vector<SnfCase>& cases);

/// Corrupted fixtures that must each falsify one claim.
enum class Mutation { None, BrokenTable, NonHomMap, WrongSandwich, CorruptedComposite, NonUnimodularU, WrongWindow };
std::string to_string(Mutation m);
Mutation parse_mutation(const std::string& name);
const std::vector<Mutation>& all_mutations();

struct RunConfig {
    std::uint64_t seed = 0;
    SeqIndex bound = 100;
    int samples = 1000;
    Mutation mutation = Mutation::None;
};

/// Every claim on the seeded corpus, ordered by claim id.
std::vector<ClaimReport> run_all(const RunConfig& cfg);

/// One "CLAIM <id> <status> [witness=...]" line per report.
std::string format_report(const std::vector<ClaimReport>& reports);
bool any_falsified(const std::vector<ClaimReport>& reports);

} // namespace gengroup
