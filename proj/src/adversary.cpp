#include "sqpack/adversary.hpp"

#include <sstream>
#include <stdexcept>

namespace sqpack {

std::string to_string(IterationType t) { return t == IterationType::type_i ? "I" : "II"; }

IterationType classify_iteration(const Placement& pl1, const Placement& pl2, const Scalar& h_prev) {
  const Placement& lo = pl1.y <= pl2.y ? pl1 : pl2;
  const Placement& hi = pl1.y <= pl2.y ? pl2 : pl1;
  bool stacked = lo.top() == hi.y && lo.rect().xs.overlaps_open(hi.rect().xs);
  return stacked && lo.y == h_prev ? IterationType::type_i : IterationType::type_ii;
}

std::vector<SquareItem> AdversaryTranscript::sequence() const {
  std::vector<SquareItem> out;
  for (const auto& it : iterations)
    for (const auto& pl : it.placements) out.push_back(pl.item);
  return out;
}

Scalar AdversaryTranscript::height(std::size_t i) const { return i == 0 ? Scalar(0) : iterations.at(i - 1).height; }

std::string AdversaryTranscript::serialize() const {
  std::ostringstream out;
  out << "strategy " << strategy << "\n";
  out << "epsilon " << to_fraction(epsilon) << "\n";
  out << "iterations " << iterations.size() << "\n";
  for (std::size_t i = 0; i < iterations.size(); ++i) {
    const auto& it = iterations[i];
    out << "ITERATION " << i + 1 << " type " << to_string(it.type) << " height " << to_fraction(it.height) << "\n";
    for (const auto& pl : it.placements)
      out << "  " << pl.item.id << " " << to_fraction(pl.side()) << " " << to_fraction(pl.x) << " " << to_fraction(pl.y)
          << "\n";
  }
  return out.str();
}

AdversaryTranscript adversary_run(OnlineStrategy& s, int m, const Scalar& eps) {
  if (m < 1) throw std::invalid_argument("adversary_run: at least one iteration");
  if (!(eps > 0) || eps >= make_scalar(1, 4)) throw std::invalid_argument("adversary_run: epsilon must lie in (0, 1/4)");
  AdversaryTranscript t;
  t.strategy = s.name();
  t.epsilon = eps;
  int id = static_cast<int>(s.packing().size());
  auto play = [&](AdversaryIteration& it, const Scalar& side) {
    Packing before = s.packing();
    Placement pl = s.place(make_item(++id, side));
    StepVerdict v = verify_step(before, pl);
    if (!v.ok())
      throw InvariantError(s.name() + " returned an invalid placement: " + to_string(first_violation(v)) + " at step " +
                           std::to_string(id));
    it.placements.push_back(pl);
  };
  const Scalar quarter = make_scalar(1, 4), half = make_scalar(1, 2);
  for (int i = 0; i < m; ++i) {
    Scalar h_prev = packing_height(s.packing());
    AdversaryIteration it;
    play(it, quarter);
    play(it, quarter);
    it.type = classify_iteration(it.placements[0], it.placements[1], h_prev);
    if (it.type == IterationType::type_i) {
      play(it, make_scalar(3, 4) + eps);
    } else {
      play(it, half + eps);
      play(it, half);
      play(it, half);
    }
    it.height = packing_height(s.packing());
    t.iterations.push_back(std::move(it));
  }
  return t;
}

Packing optimal_packing_for_transcript(const AdversaryTranscript& t) {
  Packing p;
  Scalar b = 0;
  const Scalar quarter = make_scalar(1, 4), half = make_scalar(1, 2);
  for (const auto& it : t.iterations) {
    const auto& sq = it.placements;
    if (it.type == IterationType::type_i) {
      if (sq.size() != 3) throw std::invalid_argument("type I iteration needs three squares");
      p.add(Placement{sq[0].item, Scalar(0), b});
      p.add(Placement{sq[1].item, quarter, b});
      p.add(Placement{sq[2].item, Scalar(0), b + quarter});
      b = b + quarter + sq[2].side();
    } else {
      if (sq.size() != 5) throw std::invalid_argument("type II iteration needs five squares");
      Scalar mid = b + sq[2].side();
      p.add(Placement{sq[0].item, Scalar(0), b});
      p.add(Placement{sq[1].item, Scalar(0), b + quarter});
      p.add(Placement{sq[2].item, quarter, b});
      p.add(Placement{sq[3].item, Scalar(0), mid});
      p.add(Placement{sq[4].item, half, mid});
      b = mid + half;
    }
  }
  return p;
}

std::vector<CheckLine> adversary_checks(const AdversaryTranscript& t, const Packing& optimum) {
  std::vector<CheckLine> out;
  const Scalar m = static_cast<long>(t.iterations.size());
  const Scalar h = t.height(t.iterations.size());
  const Scalar opt = packing_height(optimum);
  out.push_back(check_ge("adversary_lower_bound", h, make_scalar(5, 4) * m - make_scalar(1, 4)));
  out.push_back(check_ge("adversary_ratio", h / opt, make_scalar(5, 4) / (1 + 2 * t.epsilon)));
  VerificationReport v = verify_packing(t.sequence(), optimum.placements());
  CheckLine c{"optimum_valid", v.passed(), v.describe(), "==", "valid"};
  out.push_back(c);
  return out;
}

std::vector<SquareItem> slot_killer_instance(int k, const Scalar& delta, long n) {
  if (k < 1) throw std::invalid_argument("slot_killer_instance: k >= 1");
  if (n < 1) throw std::invalid_argument("slot_killer_instance: n >= 1");
  if (!(delta > 0) || delta >= dyadic(k))
    throw std::invalid_argument("slot_killer_instance: delta must lie in (0, 2^-k)");
  return make_items(std::vector<Scalar>(static_cast<std::size_t>(n), dyadic(k) + delta));
}

}  // namespace sqpack
