#include "qrlab/svg.hpp"

#include "qrlab/symmetry.hpp"

#include <fmt/format.h>
#include <algorithm>
#include <iterator>

namespace qrlab {

namespace {

constexpr int kGrid = 24;
constexpr int kMargin = 40;

struct Frame
{
	i64 width;
	i64 height;

	double px(double x) const { return kMargin + x * kGrid; }
	double py(double y) const { return kMargin + (static_cast<double>(height) + 1 - y) * kGrid; }
	// wide enough for the legend line
	i64 canvas_width() const { return std::max<i64>(2 * kMargin + (width + 1) * kGrid, 280); }
	i64 canvas_height() const { return 2 * kMargin + (height + 1) * kGrid; }
};

} // namespace

std::string render_svg(const LatticeRect &rect, u64 cap)
{
	rect.require_enumerable(cap);
	const Frame f{rect.width(), rect.height()};
	const auto p = static_cast<double>(rect.p());
	const auto q = static_cast<double>(rect.q());

	std::string out;
	auto w = std::back_inserter(out);
	fmt::format_to(w, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
	fmt::format_to(w,
	               "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
	               "viewBox=\"0 0 {0} {1}\">\n",
	               f.canvas_width(), f.canvas_height());
	fmt::format_to(w, "<title>Lattice rectangle for p={}, q={}</title>\n", rect.p(), rect.q());
	fmt::format_to(w, "<style>\n"
	                  ".axis{{stroke:#000;stroke-width:1}}\n"
	                  ".grid{{stroke:#ddd;stroke-width:1}}\n"
	                  ".bound{{fill:none;stroke:#888;stroke-dasharray:4 3}}\n"
	                  ".line{{stroke:#444;stroke-width:1.5}}\n"
	                  ".plus{{fill:#1f77b4}}\n"
	                  ".minus{{fill:#d62728}}\n"
	                  ".fixed{{fill:none;stroke:#2ca02c;stroke-width:2}}\n"
	                  ".violation{{stroke:#ff7f0e;stroke-width:2;stroke-dasharray:5 3}}\n"
	                  "text{{font-family:sans-serif;font-size:11px}}\n"
	                  "</style>\n");

	// grid and axes
	for (i64 x = 1; x <= f.width; ++x)
		fmt::format_to(w, "<line class=\"grid\" x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\"/>\n",
		               f.px(x), f.py(0), f.py(f.height + 1));
	for (i64 y = 1; y <= f.height; ++y)
		fmt::format_to(w, "<line class=\"grid\" x1=\"{1:.2f}\" y1=\"{0:.2f}\" x2=\"{2:.2f}\" y2=\"{0:.2f}\"/>\n",
		               f.py(y), f.px(0), f.px(f.width + 1));
	fmt::format_to(w, "<line class=\"axis\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", f.px(0),
	               f.py(0), f.px(f.width + 1), f.py(0));
	fmt::format_to(w, "<line class=\"axis\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", f.px(0),
	               f.py(0), f.px(0), f.py(f.height + 1));
	for (i64 x = 1; x <= f.width; ++x)
		fmt::format_to(w, "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n", f.px(x),
		               f.py(0) + 14, x);
	for (i64 y = 1; y <= f.height; ++y)
		fmt::format_to(w, "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{}</text>\n", f.px(0) - 6,
		               f.py(y) + 4, y);
	fmt::format_to(w, "<rect class=\"bound\" x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\"/>\n",
	               f.px(0.5), f.py(f.height + 0.5), static_cast<double>(f.width * kGrid),
	               static_cast<double>(f.height * kGrid));

	// qx = py from the origin to the edge of the plotted box
	double end_x = static_cast<double>(f.width + 1);
	double end_y = q * end_x / p;
	if (end_y > static_cast<double>(f.height + 1))
	{
		end_y = static_cast<double>(f.height + 1);
		end_x = p * end_y / q;
	}
	fmt::format_to(w, "<line class=\"line\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", f.px(0),
	               f.py(0), f.px(end_x), f.py(end_y));

	for (const auto &[a, b] : side_flip_violations(rect, cap))
		fmt::format_to(w,
		               "<line class=\"violation\" x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\">"
		               "<title>same side: ({},{}) and ({},{})</title></line>\n",
		               f.px(a.x), f.py(a.y), f.px(b.x), f.py(b.y), a.x, a.y, b.x, b.y);

	u64 n_plus = 0;
	u64 n_minus = 0;
	for (const auto &pt : enumerate_points(rect, cap))
	{
		bool plus = pt.side() == Side::Plus;
		++(plus ? n_plus : n_minus);
		fmt::format_to(w, "<circle class=\"{}\" cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"5\"><title>({},{}) qx-py={}</title></circle>\n",
		               plus ? "plus" : "minus", f.px(pt.x), f.py(pt.y), pt.x, pt.y, pt.side_value);
	}
	for (const auto &pt : fixed_points(SymmetryMap::C, rect, cap).fixed)
		fmt::format_to(w, "<circle class=\"fixed\" cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"9\"><title>C-fixed ({},{})</title></circle>\n",
		               f.px(pt.x), f.py(pt.y), pt.x, pt.y);

	fmt::format_to(w, "<text x=\"{}\" y=\"{}\">S+ (qx&lt;py): {}   S- (qx&gt;py): {}</text>\n", kMargin, kMargin / 2,
	               n_plus, n_minus);
	out += "</svg>\n";
	return out;
}

} // namespace qrlab
