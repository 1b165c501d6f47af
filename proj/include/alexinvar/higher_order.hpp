#pragma once
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "alexinvar/alexander.hpp"
#include "alexinvar/group.hpp"
#include "alexinvar/laurent.hpp"

namespace alexinvar {

// formal Q-combination of linking-zero words
using Coef = std::map<Word, Rational>;
// exponent of t -> coefficient, multiplication t*c = alpha(c)*t
using SkewLaurentPoly = std::map<int, Coef>;
using SkewMatrix = std::vector<std::vector<SkewLaurentPoly>>;

class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Fact {
  enum Kind { Eq, Ne } kind;
  Word w;
  int level;  // Eq holds at levels <= level, Ne at levels >= level
  std::string text;
};

class AssumptionLedger {
 public:
  // w=1@n, w!=1@n, "w in G(k)", "w notin G(k)"
  void add(const Presentation& p, const std::string& spec);
  void add(Fact f);
  const std::vector<Fact>& facts() const { return facts_; }
  std::vector<std::string> texts() const;

 private:
  std::vector<Fact> facts_;
};

enum class OracleMode { Auto, Abelian, Evaluation, Metabelian };
OracleMode parse_oracle_mode(const std::string& s);

struct OracleVerdict {
  enum Kind { Zero, Nonzero, Unknown } kind = Unknown;
  std::string certificate;
};

struct EngineOptions {
  long move_budget = 10000;
  int max_depth = 3;       // nested case splits; 2^3 = 8 branches
  size_t word_guard = 1000;
  int kb_max_rules = 150;
  int kb_max_len = 20;
  int kb_rounds = 4;
  OracleMode mode = OracleMode::Auto;
  static long budget_from_env(long fallback);
};

class RewriteSystem;

// word arithmetic in the quotient at one level, with the zero/unit certification hierarchy
class QuotientOracle {
 public:
  QuotientOracle(const Presentation& p, const SplittingChoice& s, int level, const AssumptionLedger& ledger,
                 const EngineOptions& opt);
  ~QuotientOracle();

  const Presentation& presentation() const { return p_; }
  int level() const { return level_; }
  bool exact() const { return exact_; }
  int betti() const { return static_cast<int>(H_.size()); }

  Word norm(const Word& w);
  Coef ncoef(const Coef& c);
  Coef cmul(const Coef& a, const Coef& b);
  Coef calpha(const Coef& a, int k);
  Word alpha(const Word& w, int k);
  std::pair<Word, int> tnormal(const Word& w);
  std::vector<long long> key0(const Word& w) const;

  OracleVerdict verdict(const Coef& c);
  // a word d = u v^-1 from two terms not known to be distinct
  std::optional<Word> split_fact(const Coef& c);
  std::optional<std::string> distinct_pair(const Word& u, const Word& v);

  std::set<std::string> certificates_used;

 private:
  std::string key1(const Word& w, size_t idx);
  Word kill(const Word& w) const;
  void guard(const Word& w) const;

  Presentation p_;
  Word split_, split_inv_;
  int level_;
  EngineOptions opt_;
  std::vector<std::vector<long long>> H_;
  std::set<int> kills_;
  std::vector<Word> distinct_;
  std::vector<Word> declared_;
  bool exact_ = false;
  bool use_meta_ = false;
  std::unique_ptr<RewriteSystem> rws_;
  std::map<std::string, Word> reps_;
  std::unordered_map<Word, Word, WordHash> cache_;
  struct Meta;
  std::vector<std::shared_ptr<Meta>> meta_;
};

OracleVerdict certify(const Coef& c, int level, const Presentation& p, const AssumptionLedger& ledger,
                      const SplittingChoice& s, const EngineOptions& opt = {});

// skew polynomial arithmetic relative to an oracle
SkewLaurentPoly skew_mul(QuotientOracle& q, const SkewLaurentPoly& f, const SkewLaurentPoly& g);
SkewLaurentPoly skew_add(const SkewLaurentPoly& f, const SkewLaurentPoly& g, int sign = 1);
// purely formal product with free reduction only
SkewLaurentPoly skew_mul_formal(const SkewLaurentPoly& f, const SkewLaurentPoly& g, const Word& split);
std::string show_coef(const Presentation& p, const Coef& c);
std::string show_skew(const Presentation& p, const SkewLaurentPoly& f);

SkewMatrix build_skew_matrix(QuotientOracle& q);

struct Move {
  enum Kind { RowAdd, RowScale, ColAdd, ColScale, RowReplace, ColReplace, TakePivot, DropUnit, DropZeroRows, DropColumn } kind;
  int a = 0, b = 0;
  SkewLaurentPoly q;                  // multiplier, or divisor for Replace moves
  std::vector<SkewLaurentPoly> line;  // replacement row/column
  std::string text;
};

struct DeltaResult {
  enum Outcome { Finite, Infinite, Conditional, Inconclusive } outcome = Inconclusive;
  int value = 0;
  std::vector<int> spans;
  int free_rank = 0;
  struct Branch;
  std::vector<Branch> branches;
  std::string blocking;
  std::vector<std::string> assumptions;  // ledger facts in force
  std::vector<std::string> certificates;
  std::vector<std::string> move_log;
  bool replay_ok = true;
  int replayed_runs = 0;

  std::string signature() const;  // outcome data without logs
};

struct DeltaResult::Branch {
  std::string assumption;
  DeltaResult result;
};

DeltaResult higher_order_degree(const Presentation& p, const SplittingChoice& s, int level,
                                const AssumptionLedger& ledger = {}, const EngineOptions& opt = {});

// ---------------------------------------------------------------- curves and bounds

struct CurveData {
  int d = 0;
  std::vector<int> degrees;
  int s = 0;
  std::vector<LocalSingularity> singularities;
  int genus = 0;
  int l() const { return static_cast<int>(singularities.size()); }
  void validate() const;
};

std::optional<CurveData> curve_data_from(const Presentation& p);

struct BoundCheck {
  int level = 0;
  std::string status;  // pass | fail | inconclusive
  std::optional<int> delta;
  long degree_bound = 0;
  long local_bound = 0;
  std::string detail;
};

std::vector<BoundCheck> check_bounds(const std::vector<std::pair<int, DeltaResult>>& results, const CurveData& cd);

}  // namespace alexinvar
