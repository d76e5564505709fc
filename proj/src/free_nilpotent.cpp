#include "adinv/free_nilpotent.hpp"

#include <map>
#include <stdexcept>

namespace adinv {

namespace {

using Expr = std::map<std::size_t, Rational>;

void add_to(Expr& acc, const Expr& e, const Rational& s) {
  for (const auto& [idx, c] : e) {
    auto& slot = acc[idx];
    slot += s * c;
    if (slot == 0) acc.erase(idx);
  }
}

class HallCollector {
 public:
  HallCollector(std::size_t p, std::size_t k) : step_(k) {
    for (std::size_t i = 0; i < p; ++i) elements_.push_back({1, std::nullopt});
    for (std::size_t d = 2; d <= k; ++d) {
      const std::size_t existing = elements_.size();
      for (std::size_t u = 0; u < existing; ++u) {
        for (std::size_t v = 0; v < u; ++v) {
          if (elements_[u].degree + elements_[v].degree != d) continue;
          if (elements_[u].factors && elements_[u].factors->second > v) continue;
          index_[{u, v}] = elements_.size();
          elements_.push_back({d, std::make_pair(u, v)});
        }
      }
    }
  }

  const std::vector<HallElement>& elements() const { return elements_; }

  // [h_a, h_b] expanded on the Hall basis, truncated above degree k.
  const Expr& bracket(std::size_t a, std::size_t b) {
    auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Expr result;
    if (a != b && elements_[a].degree + elements_[b].degree <= step_) {
      if (a < b) {
        add_to(result, bracket(b, a), Rational(-1));
      } else if (!elements_[a].factors || elements_[a].factors->second <= b) {
        result[index_.at({a, b})] = 1;
      } else {
        // [[a1,a2],b] = [[a1,b],a2] + [a1,[a2,b]]
        const auto [a1, a2] = *elements_[a].factors;
        const Expr left = bracket(a1, b);
        for (const auto& [idx, c] : left) add_to(result, bracket(idx, a2), c);
        const Expr right = bracket(a2, b);
        for (const auto& [idx, c] : right) add_to(result, bracket(a1, idx), c);
      }
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  std::size_t step_;
  std::vector<HallElement> elements_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_;
  std::map<std::pair<std::size_t, std::size_t>, Expr> memo_;
};

std::string hall_label(const std::vector<HallElement>& hall, std::size_t i) {
  if (!hall[i].factors) return "x" + std::to_string(i + 1);
  return "[" + hall_label(hall, hall[i].factors->first) + "," + hall_label(hall, hall[i].factors->second) + "]";
}

}  // namespace

FreeNilpotent free_nilpotent_hall(std::size_t p, std::size_t k) {
  if (p < 1 || k < 1) throw std::invalid_argument("free nilpotent algebra needs p >= 1 and k >= 1");
  HallCollector hc(p, k);
  const auto& hall = hc.elements();
  const std::size_t n = hall.size();
  BracketTable table;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Expr& e = hc.bracket(i, j);
      if (e.empty()) continue;
      std::vector<Term> terms;
      for (const auto& [idx, c] : e) terms.push_back({idx, c});
      table[{i, j}] = std::move(terms);
    }
  }
  FreeNilpotent out;
  out.generators = p;
  out.step = k;
  out.hall = hall;
  out.graded_dims.assign(k, 0);
  for (const auto& h : hall) ++out.graded_dims[h.degree - 1];
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(hall_label(hall, i));
  out.algebra = LieAlgebra::create(n, std::move(labels), std::move(table));
  return out;
}

bool verify_free_isomorphism(const LieAlgebra& g, const MatrixQ& images, std::size_t p, std::size_t k) {
  const FreeNilpotent f = free_nilpotent_hall(p, k);
  const std::size_t n = f.algebra.dim();
  if (g.dim() != n || images.rows() != n || images.cols() != n) return false;
  if (rank(images) != n) return false;
  const MatrixQ cols = images.transpose();  // row m = image of basis element m
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec lhs = zero_vec(n);
      for (const auto& t : f.algebra.basis_bracket(a, b)) lhs = lhs + t.c * cols.row(t.k);
      if (lhs != g.bracket(cols.row(a), cols.row(b))) return false;
    }
  }
  return true;
}

std::optional<MatrixQ> match_free_nilpotent(const LieAlgebra& g, const std::vector<Vec>& generators,
                                            std::size_t p, std::size_t k) {
  if (generators.size() != p) return std::nullopt;
  const FreeNilpotent f = free_nilpotent_hall(p, k);
  const std::size_t n = f.algebra.dim();
  if (g.dim() != n) return std::nullopt;
  std::vector<Vec> image(n);
  for (std::size_t m = 0; m < n; ++m) {
    if (!f.hall[m].factors) {
      if (generators[m].size() != n) return std::nullopt;
      image[m] = generators[m];
    } else {
      const auto [u, v] = *f.hall[m].factors;
      image[m] = g.bracket(image[u], image[v]);
    }
  }
  MatrixQ images = MatrixQ::from_rows(image, n).transpose();
  if (!verify_free_isomorphism(g, images, p, k)) return std::nullopt;
  return images;
}

}  // namespace adinv
