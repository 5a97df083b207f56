#include "walkgen/benchmarks.hpp"

namespace walkgen {

namespace {

// Triangle classifier over three sides. The a == b family is classified
// with the full triangle inequality; the remaining branches report the
// equality structure of positive inputs. The equilateral outcome sits at
// the end of an equality chain, which makes it all but unreachable for
// random inputs on wide domains.
const char* kTriangleBody = R"(
if (a == b) {
  if (a + b > c && b + c > a && a + c > b) {
    if (b == c) {
      target equilateral;
    } else {
      target isosceles;
    }
  } else {
    target not_a_triangle;
  }
} else {
  if (a > 0 && b > 0 && c > 0) {
    if (b == c) {
      target isosceles;
    } else {
      if (a == c) {
        target isosceles;
      } else {
        target scalene;
      }
    }
  } else {
    target invalid;
  }
}
)";

// Classifies the position of a line segment against an axis-aligned
// rectangle given by two corners: inside, crossing the border, outside, or
// crossing the interior, with degenerate shapes reported separately.
const char* kLineRectBody = R"(
xlo = rx1;
xhi = rx2;
if (rx1 > rx2) {
  xlo = rx2;
  xhi = rx1;
}
ylo = ry1;
yhi = ry2;
if (ry1 > ry2) {
  ylo = ry2;
  yhi = ry1;
}
bad = 0;
if (xlo == xhi || ylo == yhi) {
  bad = 1;
  target degenerate_rectangle;
}
if (lx1 == lx2 && ly1 == ly2) {
  bad = 1;
  target degenerate_line;
}
if (bad == 0) {
  in1 = 0;
  if (lx1 >= xlo && lx1 <= xhi && ly1 >= ylo && ly1 <= yhi) {
    in1 = 1;
  }
  in2 = 0;
  if (lx2 >= xlo && lx2 <= xhi && ly2 >= ylo && ly2 <= yhi) {
    in2 = 1;
  }
  if (in1 == 1 && in2 == 1) {
    target inside;
  } else {
    if (in1 == 1 || in2 == 1) {
      target crosses_border;
    } else {
      sep = 0;
      if (lx1 < xlo && lx2 < xlo) {
        sep = 1;
      }
      if (lx1 > xhi && lx2 > xhi) {
        sep = 1;
      }
      if (ly1 < ylo && ly2 < ylo) {
        sep = 1;
      }
      if (ly1 > yhi && ly2 > yhi) {
        sep = 1;
      }
      if (sep == 1) {
        target outside;
      } else {
        # Side of the carrier line for each rectangle corner.
        dx = lx2 - lx1;
        dy = ly2 - ly1;
        c1 = dx * (ylo - ly1) - dy * (xlo - lx1);
        c2 = dx * (yhi - ly1) - dy * (xlo - lx1);
        c3 = dx * (ylo - ly1) - dy * (xhi - lx1);
        c4 = dx * (yhi - ly1) - dy * (xhi - lx1);
        if (c1 > 0 && c2 > 0 && c3 > 0 && c4 > 0) {
          target outside;
        } else {
          if (c1 < 0 && c2 < 0 && c3 < 0 && c4 < 0) {
            target outside;
          } else {
            target crosses;
          }
        }
      }
    }
  }
}
)";

// Days between two Gregorian dates. Validation is fully nested: the second
// date is only checked once the first is known good, and the day distance
// is only computed for two valid dates, using one shared year loop and one
// month loop per date.
const char* kDayDateSource = R"(
var d1: int32;
var m1: int32;
var y1: int32;
var d2: int32;
var m2: int32;
var y2: int32;

if (y1 >= 1 && y1 <= 9999) {
 if (m1 >= 1 && m1 <= 12) {
  leap1 = 0;
  if (y1 % 4 == 0) {
    if (y1 % 100 != 0) {
      leap1 = 1;
    } else {
      if (y1 % 400 == 0) {
        leap1 = 1;
      }
    }
  }
  dim1 = 0;
  if (m1 == 2) {
    dim1 = 28;
    if (leap1 == 1) {
      dim1 = 29;
    }
  } else {
    par1 = 0;
    if (m1 <= 7) {
      par1 = 1;
    }
    if (m1 % 2 == par1) {
      dim1 = 31;
    } else {
      dim1 = 30;
    }
  }
  if (d1 >= 1 && d1 <= dim1) {
   if (y2 >= 1 && y2 <= 9999) {
    if (m2 >= 1 && m2 <= 12) {
     leap2 = 0;
     if (y2 % 4 == 0) {
       if (y2 % 100 != 0) {
         leap2 = 1;
       } else {
         if (y2 % 400 == 0) {
           leap2 = 1;
         }
       }
     }
     dim2 = 0;
     if (m2 == 2) {
       dim2 = 28;
       if (leap2 == 1) {
         dim2 = 29;
       }
     } else {
       par2 = 0;
       if (m2 <= 7) {
         par2 = 1;
       }
       if (m2 % 2 == par2) {
         dim2 = 31;
       } else {
         dim2 = 30;
       }
     }
     if (d2 >= 1 && d2 <= dim2) {
       days1 = 0;
       days2 = 0;
       ymax = y1;
       if (y2 > y1) {
         ymax = y2;
       }
       yy = 1;
       while (yy < ymax) {
         leapy = 0;
         if (yy % 4 == 0) {
           if (yy % 100 != 0) {
             leapy = 1;
           } else {
             if (yy % 400 == 0) {
               leapy = 1;
             }
           }
         }
         len = 365;
         if (leapy == 1) {
           len = 366;
         }
         if (yy < y1) {
           days1 = days1 + len;
         }
         if (yy < y2) {
           days2 = days2 + len;
         }
         yy = yy + 1;
       }
       mm = 1;
       while (mm < m1) {
         dm = 0;
         if (mm == 2) {
           dm = 28;
           if (leap1 == 1) {
             dm = 29;
           }
         } else {
           pp = 0;
           if (mm <= 7) {
             pp = 1;
           }
           if (mm % 2 == pp) {
             dm = 31;
           } else {
             dm = 30;
           }
         }
         days1 = days1 + dm;
         mm = mm + 1;
       }
       mm = 1;
       while (mm < m2) {
         dm = 0;
         if (mm == 2) {
           dm = 28;
           if (leap2 == 1) {
             dm = 29;
           }
         } else {
           pp = 0;
           if (mm <= 7) {
             pp = 1;
           }
           if (mm % 2 == pp) {
             dm = 31;
           } else {
             dm = 30;
           }
         }
         days2 = days2 + dm;
         mm = mm + 1;
       }
       days1 = days1 + d1;
       days2 = days2 + d2;
       diff = 0;
       if (days2 < days1) {
         diff = days1 - days2;
       } else {
         diff = days2 - days1;
       }
       if (diff == 0) {
         target same_date;
       }
       if (diff >= 365) {
         target over_a_year;
       }
       if (diff >= 3650) {
         target decade_apart;
       }
     } else {
       target bad_day_2;
     }
    } else {
     target bad_month_2;
    }
   } else {
    target bad_year_2;
   }
  } else {
   target bad_day_1;
  }
 } else {
  target bad_month_1;
 }
} else {
 target bad_year_1;
}
)";

std::string triangle_source(const std::string& decl) {
    return "var a: " + decl + ";\nvar b: " + decl + ";\nvar c: " + decl + ";\n" + kTriangleBody;
}

std::string line_rect_source(const std::string& decl) {
    std::string s;
    for (const char* v : {"lx1", "ly1", "lx2", "ly2", "rx1", "ry1", "rx2", "ry2"})
        s += "var " + std::string(v) + ": " + decl + ";\n";
    return s + kLineRectBody;
}

std::vector<BenchmarkEntry> make_benchmarks() {
    std::vector<BenchmarkEntry> v;
    v.push_back({"tri-int", "triangle classifier, 32-bit integer sides",
                 triangle_source("int32"), 6, 24, 2});
    v.push_back({"tri-real", "triangle classifier, real sides in ±100000.000",
                 triangle_source("real(-100000, 100000, 3)"), 6, 24, 2});
    v.push_back({"tri-real-wide", "triangle classifier, real sides in ±2000000.0000",
                 triangle_source("real(-2000000, 2000000, 4)"), 6, 24, 2});
    v.push_back({"line-rect", "line/rectangle position classifier, coordinates in ±100000.000",
                 line_rect_source("real(-100000, 100000, 3)"), 16, 96, -1});
    v.push_back({"line-rect-wide",
                 "line/rectangle position classifier, coordinates in ±2000000.0000",
                 line_rect_source("real(-2000000, 2000000, 4)"), 16, 96, -1});
    v.push_back({"day-date", "days between two Gregorian dates, 32-bit integer fields",
                 kDayDateSource, 42, 108, -1});
    return v;
}

}  // namespace

const std::vector<BenchmarkEntry>& builtin_benchmarks() {
    static const std::vector<BenchmarkEntry> entries = make_benchmarks();
    return entries;
}

const BenchmarkEntry* find_benchmark(const std::string& name) {
    for (const auto& e : builtin_benchmarks())
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace walkgen
