// Copyright 2026 The Carmichael Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "carmichael/fixtures.hpp"

namespace carmichael {

Fixture make_fixture(std::string name, const std::string& decimal, const std::string& factorization) {
  Fixture f{std::move(name), parse_nat(decimal), parse_factorization(factorization)};
  if (f.value != f.factors.value()) {
    throw ValidationError("fixture " + f.name + ": " + decimal + " is not the product of " + factorization);
  }
  return f;
}

std::vector<const Fixture*> FixtureSet::numbers() const {
  std::vector<const Fixture*> out{&pinch};
  for (const auto& f : l1_minimal) out.push_back(&f);
  for (const auto& f : l2_single_divisor) out.push_back(&f);
  out.push_back(&nonrigid_smallest);
  out.push_back(&nonrigid_largest);
  return out;
}

namespace {

FixtureSet build() {
  FixtureSet s;
  s.l1 = parse_factorization("2^7*3^3*5^2*7*11*13*17*19*29");
  s.l2 = parse_factorization("2^7*3^3*5^2*7*11*13*17*19*29*31");
  s.pinch = make_fixture("pinch", "443372888629441", "17*31*41*43*89*97*167*331");
  s.l1_minimal = {
      make_fixture("l1-minimal-a", "4924827541614265513589667769108860614401",
                   "31*37*101*103*109*199*419*449*521*571*911*2089*2551*5851*11969"),
      make_fixture("l1-minimal-b", "16075771355347638016980686030521098019201",
                   "41*67*79*181*199*233*239*307*449*521*1217*1871*4159*5851*9281"),
  };
  s.l2_single_divisor = {
      make_fixture("l2-single-a", "69560845369554955388165088342528866719334401",
                   "23*43*59*61*79*89*113*131*151*191*307*311*373*419*433*463*701*1217*2551"),
      make_fixture("l2-single-b", "112788094121852627374401548507449628984140801",
                   "23*53*59*79*89*101*109*113*131*181*199*233*307*349*433*701*911*1217*4523"),
      make_fixture("l2-single-c", "28428267389677772376959914325492376114874620587020801",
                   "61*67*71*89*101*103*113*151*181*191*199*233*239*271*307*419*463*521*571*701*911*5279"),
      make_fixture("l2-single-d", "1717985169415387463787686933915303091226840473601",
                   "41*43*53*61*89*103*113*151*191*311*349*373*419*433*463*521*571*701*929*15313"),
  };
  s.nonrigid_smallest =
      make_fixture("nonrigid-smallest", "392000251605356793349050844538065236557716721692385776886401",
                   "23*67*71*89*109*113*191*199*233*239*271*307*373*419*521*911*929*1153*1217*1429*2089*2729*23561");
  s.nonrigid_largest = make_fixture(
      "nonrigid-largest",
      "2706440581932960270059556320865135299543027488341564061948937275059222956610372230689798686533299112388959963"
      "299201",
      "23*37*43*53*59*61*67*71*89*103*109*113*131*181*191*199*239*271*311*373*379*419*433*463*521*683*701*911*929*"
      "991*1153*1429*2089*2551*3191*4159*5279*11969*15809*23561*23869*244529");
  return s;
}

}  // namespace

const FixtureSet& fixtures() {
  static const FixtureSet set = build();
  return set;
}

}  // namespace carmichael
