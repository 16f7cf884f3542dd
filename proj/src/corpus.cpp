#include "ybx/corpus.hpp"

#include <array>

namespace ybx {

namespace {

struct Bundled {
  std::string_view name;
  std::string_view text;
};

// Kept byte-identical to data/example{2,3,4}.ybx.
constexpr std::array<Bundled, 3> kBundled{{
    {"paper-16-91", R"ybx(ybx v1 n=16 labels=123456789abcdefg
1:
2: (37)(48)(bf)(cg)
3: (25)(3b4f)(7c8g)(9dea)
4: (25)(3g4c)(7f8b)(9dea)
5: (38)(47)(bg)(cf)
6: (34)(78)(bc)(fg)
7: (25)(3c7b)(4g8f)(9dea)
8: (25)(3f7g)(4b8c)(9dea)
9: (38)(47)(9e)(ad)
a: (34)(78)(9e)(ad)(bf)(cg)
b: (25)(3f4b)(7g8c)(9aed)
c: (25)(3c4g)(7b8f)(9aed)
d: (9e)(ad)(bg)(cf)
e: (37)(48)(9e)(ad)(bc)(fg)
f: (25)(3g7f)(4c8b)(9aed)
g: (25)(3b7c)(4f8g)(9aed)
)ybx"},
    {"paper-16-318", R"ybx(ybx v1 n=16 labels=123456789abcdefg
1:
2: (9e)(ad)(bg)(cf)
3: (34)(78)(9e)(ad)(bf)(cg)
4: (34)(78)(bc)(fg)
5: (9a)(bc)(de)(fg)
6: (9d)(ae)(bf)(cg)
7: (34)(78)(9d)(ae)(bg)(cf)
8: (34)(78)(9a)(de)
9: (56)(78)(de)(fg)
a: (56)(78)(9dae)(bfcg)
b: (34)(56)(9dae)(bgcf)
c: (34)(56)(bc)(de)
d: (56)(78)(9ead)(bgcf)
e: (56)(78)(9a)(bc)
f: (34)(56)(9a)(fg)
g: (34)(56)(9ead)(bfcg)
)ybx"},
    {"paper-24-96", R"ybx(ybx v1 n=24 labels=123456789abcdefghijklmno
1:
2: (4ag)(5bh)(6ci)(7jd)(8ke)(9lf)
3: (4ga)(5hb)(6ic)(7dj)(8ek)(9fl)
4: (23)(4ogc)(5nhb)(6mia)(7j)(8l)(9k)(ef)
5: (23)(4cmi)(5bnh)(6aog)(7d)(8f)(9e)(kl)
6: (23)(46)(89)(ac)(dj)(el)(fk)(go)(hn)(im)
7: (4m)(5n)(6o)(ag)(bh)(ci)
8: (4gm)(5hn)(6io)(7jd)(8ke)(9lf)
9: (4am)(5bn)(6co)(7dj)(8ek)(9fl)
a: (23)(4cgo)(5bhn)(6aim)(7j)(8l)(9k)(ef)
b: (23)(4o)(5n)(6m)(7d)(8f)(9e)(ac)(gi)(kl)
c: (23)(4iao)(5hbn)(6gcm)(89)(dj)(el)(fk)
d: (4a)(5b)(6c)(gm)(hn)(io)
e: (7jd)(8ke)(9lf)(amg)(bnh)(coi)
f: (4mg)(5nh)(6oi)(7dj)(8ek)(9fl)
g: (23)(46)(7j)(8l)(9k)(ao)(bn)(cm)(ef)(gi)
h: (23)(4imc)(5hnb)(6goa)(7d)(8f)(9e)(kl)
i: (23)(4oai)(5nbh)(6mcg)(89)(dj)(el)(fk)
j: (4g)(5h)(6i)(am)(bn)(co)
k: (4ma)(5nb)(6oc)(7jd)(8ke)(9lf)
l: (7dj)(8ek)(9fl)(agm)(bhn)(cio)
m: (23)(4i)(5h)(6g)(7j)(8l)(9k)(ac)(ef)(mo)
n: (23)(46)(7d)(8f)(9e)(ai)(bh)(cg)(kl)(mo)
o: (23)(4c)(5b)(6a)(89)(dj)(el)(fk)(gi)(mo)
)ybx"},
}};

}  // namespace

std::vector<std::string_view> bundled_example_names() {
  std::vector<std::string_view> out;
  for (const auto& b : kBundled) out.push_back(b.name);
  return out;
}

std::optional<std::string_view> bundled_example(std::string_view name) {
  for (const auto& b : kBundled)
    if (b.name == name) return b.text;
  return std::nullopt;
}

}  // namespace ybx
