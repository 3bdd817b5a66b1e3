#pragma once

#include <stdexcept>
#include <string>

namespace klc {

// Element of the dihedral group I2(m) in normal form: the alternating word
// of length k starting with generator `start` (0 or 1). k = 0 is the
// identity; the two words of length m are the same element, normalized to
// start = 0.
struct DihedralElement {
  int m = 2;
  int k = 0;
  int start = 0;

  DihedralElement() = default;
  DihedralElement(int order, int len, int first) : m(order), k(len), start(first) {
    if (m < 2) throw std::invalid_argument("DihedralElement: m >= 2 required");
    if (k < 0 || k > m) throw std::invalid_argument("DihedralElement: bad word length");
    if (start != 0 && start != 1) throw std::invalid_argument("DihedralElement: bad start");
    if (k == 0) start = 0;
    if (k == m) start = 0;  // the longest element has both spellings
  }

  static DihedralElement identity(int order) { return DihedralElement(order, 0, 0); }

  int length() const { return k; }
  // Generator index (0/1) of the last letter.
  int last() const { return (k % 2 == 1) ? start : 1 - start; }

  DihedralElement left_mult(int s) const {
    if (k == 0) return DihedralElement(m, 1, s);
    if (k == m) return DihedralElement(m, m - 1, 1 - s);
    if (s == start) return DihedralElement(m, k - 1, 1 - start);
    return DihedralElement(m, k + 1, s);
  }

  DihedralElement right_mult(int s) const {
    if (k == 0) return DihedralElement(m, 1, s);
    // Drop the last letter of the spelling of w0 whose last letter is s.
    if (k == m) return DihedralElement(m, m - 1, (m % 2 == 1) ? s : 1 - s);
    if (s == last()) return DihedralElement(m, k - 1, start);
    return DihedralElement(m, k + 1, start);
  }

  DihedralElement inverse() const {
    if (k == 0 || k == m) return *this;
    return DihedralElement(m, k, last());
  }

  // Reduced word as 1-based generator digits, e.g. "121"; "e" for identity.
  std::string word() const {
    if (k == 0) return "e";
    std::string s;
    for (int i = 0; i < k; ++i) s += static_cast<char>('1' + ((start + i) % 2));
    return s;
  }

  bool operator==(const DihedralElement&) const = default;
};

}  // namespace klc
