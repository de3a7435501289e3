#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3fib/curves.hpp"
#include "k3fib/weierstrass.hpp"

namespace k3fib {

// r2 r3 r4 r9 x2 x3 x4 x9 and the weierstrass-* examples.
std::vector<std::string> dataset_names();
bool is_dataset(const std::string& name);
bool is_weierstrass_dataset(const std::string& name);

// Config text in the curve file format, or the Weierstrass example text.
std::string dump_dataset(const std::string& name);
// Parsed and validated curve configuration.
CurveConfig load_dataset(const std::string& name);
// Dataset name, or otherwise a config file path.
CurveConfig resolve_config(const std::string& name_or_path);

struct WeierstrassPoint {
    std::string name;
    std::string x, y;
    std::optional<int> order;  // expected torsion order; nullopt when expected off the curve
};

struct WeierstrassExample {
    std::string name;
    long sqrt_d = 1;
    std::string a4, a6;
    std::vector<WeierstrassPoint> points;

    FFCurve curve() const;
    FFPoint point(const WeierstrassPoint& p) const;
};

// Text format, one item per line:
//   sqrt <d>
//   a4 <expr>
//   a6 <expr>
//   point <name> | <x> | <y> | <order>|off
WeierstrassExample parse_weierstrass_example(const std::string& name, const std::string& text);
WeierstrassExample weierstrass_example(const std::string& name);

}  // namespace k3fib
