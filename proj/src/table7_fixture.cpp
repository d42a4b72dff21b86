#include "citerank/dataset.hpp"

namespace citerank {

// Published ranking of 173 U.S. CS doctoral programs: per-program senior-
// faculty citation measures alongside the assessment score each one maps to.
// Embedded so the replay and golden checks need no external data files.
std::string_view table7_fixture_csv() {
    static constexpr std::string_view csv = R"fixture(
rank,university,size,m10,g10,c40,c60,usn,scholar
1,Carnegie Mellon University,143,218,200,105,74,5.0,5.0
1,Massachusetts Institute of Technology,97,306,286,72,66,5.0,5.0
1,Stanford University,55,395,425,46,43,5.0,5.0
1,University of California - Berkeley,68,375,351,57,54,5.0,5.0
5,Cornell University,75,216,228,50,41,4.5,4.4
6,Georgia Institute of Technology,97,167,139,66,48,4.3,4.3
6,University of Washington,56,232,239,40,31,4.5,4.3
8,University of California - Los Angeles,44,206,243,37,28,4.1,4.2
8,University of California - San Diego,60,204,192,47,36,4.0,4.2
10,Columbia University,45,218,206,35,27,4.0,4.1
10,Princeton University,35,285,232,27,23,4.4,4.1
10,University of Illinois - Urbana - Champaign,63,169,163,45,34,4.6,4.1
10,University of Michigan - Ann Arbor,59,235,175,40,31,4.1,4.1
14,Johns Hopkins University,27,277,296,18,14,3.5,4.0
14,New York University,57,204,154,39,31,3.4,4.0
14,University of Maryland - College Park,48,182,174,37,32,4.0,4.0
14,Yale University,21,319,261,19,16,3.7,4.0
18,University of Southern California,39,234,194,25,20,3.7,3.9
18,University of Wisconsin - Madison,34,215,196,27,22,4.2,3.9
20,California Institute of Technology,16,287,238,12,8,4.2,3.7
20,Harvard University,30,202,183,22,16,3.9,3.7
20,University of Massachusetts - Amherst,44,177,170,25,16,3.6,3.7
20,University of Pennsylvania,33,188,165,25,21,3.8,3.7
20,University of Texas - Austin,46,177,142,27,23,4.3,3.7
25,Duke University,39,163,155,24,17,3.6,3.6
25,University of California - Santa Barbara,30,166,158,23,16,3.3,3.6
27,Brown University,31,167,145,20,17,3.7,3.5
27,University of California - Davis,33,149,129,23,17,3.3,3.5
27,University of California - Santa Cruz,21,192,169,16,13,2.8,3.5
27,University of Chicago,36,144,165,21,15,3.3,3.5
27,University of North Carolina - Chapel Hill,32,161,146,21,16,3.6,3.5
32,Pennsylvania State University,35,136,114,21,15,3.4,3.4
32,University of California - Irvine,42,112,116,23,17,3.4,3.4
32,University of Minnesota - Twin Cities,44,98,127,29,15,3.4,3.4
35,Purdue University,54,112,111,27,14,3.7,3.3
35,Rice University,19,154,147,15,10,3.7,3.3
35,Rutgers University,41,124,112,20,16,3.3,3.3
35,Stony Brook University - SUNY,42,116,121,22,11,3.1,3.3
35,University of California - Riverside,31,134,128,18,12,2.8,3.3
40,Boston University,24,118,134,16,9,3.0,3.2
40,Northeastern University,58,89,99,25,14,2.7,3.2
40,University of Arizona,19,140,130,15,9,3.1,3.2
43,Northwestern University,33,99,104,21,9,3.3,3.1
43,Ohio State University,42,95,90,21,10,3.3,3.1
43,University of Virginia,27,140,81,15,10,3.4,3.1
46,Colorado State University,21,107,110,15,7,2.4,3.0
46,Indiana University,46,87,80,21,11,2.9,3.0
46,Michigan State University,31,96,97,16,7,2.8,3.0
46,University at Buffalo - SUNY,37,109,97,13,8,2.6,3.0
46,University of Colorado - Boulder,34,108,100,15,8,3.1,3.0
46,University of Rochester,19,117,124,11,6,2.9,3.0
46,University of Tennessee - Knoxville,24,113,114,12,6,2.4,3.0
46,University of Utah,43,93,82,20,10,3.1,3.0
46,Virginia Tech,43,79,79,19,10,3.1,3.0
55,Arizona State University,59,70,74,19,11,3.0,2.9
55,George Mason University,41,80,69,20,7,2.5,2.9
55,North Carolina State University,49,62,63,18,11,3.0,2.9
55,Texas A&M University,42,76,74,21,8,3.1,2.9
55,University of Texas - Dallas,50,72,54,23,10,2.4,2.9
55,Vanderbilt University,21,113,110,12,5,2.8,2.9
55,Washington University,25,96,112,13,6,3.1,2.9
62,College of William and Mary,15,118,94,8,4,2.4,2.8
62,Rensselaer Polytechnic Institute,24,80,91,11,6,2.9,2.8
62,University of Pittsburgh,18,109,102,10,4,2.9,2.8
65,Dartmouth College,21,87,96,10,3,3.1,2.7
65,Lehigh University,16,73,94,9,4,2.1,2.7
65,Portland State University,22,90,56,10,7,0.0,2.7
65,University of Florida,41,51,61,12,8,3.0,2.7
65,University of Illinois - Chicago,31,66,74,10,6,2.7,2.7
65,University of Maryland - Baltimore County,25,71,88,10,5,2.4,2.7
65,University of Notre Dame,19,95,86,9,4,2.7,2.7
65,University of Texas - Arlington,26,74,63,12,5,2.2,2.7
73,CUNY Grad School & University Center,78,29,30,22,10,2.3,2.6
73,Temple University,22,72,60,10,5,2.0,2.6
73,University of Central Florida,36,53,58,11,8,2.2,2.6
73,University of Nebraska - Lincoln,28,71,65,10,5,2.4,2.6
77,Illinois Institute of Technology,18,65,57,8,3,2.1,2.5
77,University of Delaware,24,67,63,8,3,2.4,2.5
77,University of South Florida,21,63,59,8,5,2.1,2.5
80,Case Western Reserve University,18,71,62,6,2,2.4,2.4
80,Drexel University,19,54,65,6,2,2.2,2.4
80,New Jersey Institute of Technology,29,49,41,9,4,2.2,2.4
80,Tufts University,16,62,64,5,2,2.4,2.4
80,University of Houston,24,60,55,11,1,2.1,2.4
80,University of Memphis,11,72,64,4,2,0.0,2.4
80,University of Missouri,15,66,56,6,3,2.1,2.4
80,University of New Mexico,17,55,65,6,2,2.3,2.4
80,Wayne State University,20,65,69,7,1,2.0,2.4
80,Worcester Polytechnic Institute,27,57,56,7,3,2.2,2.4
90,Brandeis University,14,59,34,6,4,2.3,2.3
90,Brigham Young University,31,50,39,7,3,2.2,2.3
90,Georgia State University,19,45,50,6,2,2.0,2.3
90,Oregon State University,36,57,47,8,1,2.5,2.3
90,University of Connecticut,24,60,50,5,1,2.3,2.3
90,University of Iowa,20,56,59,5,2,2.6,2.3
90,University of Kansas,23,46,47,5,3,2.3,2.3
90,University of Texas - San Antonio,24,58,43,6,1,0.0,2.3
90,West Virginia University,21,61,39,8,2,2.0,2.3
99,Binghamton University - SUNY,27,51,44,4,1,2.0,2.2
99,Clemson University,33,54,42,5,1,2.3,2.2
99,Florida International University,29,51,27,6,2,0.0,2.2
99,Iowa State University,27,42,45,5,2,2.6,2.2
99,Louisiana State University - Baton Rouge,19,47,38,3,2,2.1,2.2
99,Missouri University of Science & Tech,16,52,43,4,1,2.0,2.2
99,Syracuse University,26,38,34,6,3,2.5,2.2
99,University at Albany - SUNY,18,58,49,4,1,2.1,2.2
99,University of Georgia,21,51,48,4,2,2.2,2.2
99,University of Hawaii - Manoa,24,36,27,6,3,0.0,2.2
99,University of Kentucky,23,45,32,4,3,2.2,2.2
99,University of Oregon,15,43,58,3,1,2.6,2.2
99,University of South Carolina,25,33,42,7,1,2.1,2.2
112,Florida Atlantic University,31,26,26,6,3,0.0,2.1
112,Florida State University,22,44,37,5,1,2.3,2.1
112,George Washington University,15,32,33,3,2,2.3,2.1
112,Stevens Institute of Technology,14,45,44,3,1,2.1,2.1
112,University of Massachusetts - Lowell,15,42,23,4,2,0.0,2.1
117,Colorado School of Mines,9,58,48,2,0,2.1,2.0
117,DePaul University,50,19,22,6,3,0.0,2.0
117,Naval Postgraduate School,18,33,32,2,1,2.4,2.0
117,Old Dominion University,15,39,28,2,1,0.0,2.0
117,University of Alabama,16,25,25,4,2,0.0,2.0
117,University of Alabama - Birmingham,9,37,40,1,1,0.0,2.0
117,University of Arkansas - Fayetteville,16,32,22,2,2,0.0,2.0
117,University of Maine,6,50,34,3,0,0.0,2.0
117,University of Massachusetts - Boston,15,41,43,5,0,0.0,2.0
117,University of Tulsa,13,32,35,3,1,0.0,2.0
117,Virginia Commonwealth University,17,36,37,2,1,0.0,2.0
117,Washington State University,17,34,20,4,1,2.4,2.0
129,Claremont Graduate University,6,38,45,1,0,0.0,1.9
129,Kansas State University,15,43,32,3,0,2.2,1.9
129,New Mexico State University,13,56,31,1,0,0.0,1.9
129,Oakland University,14,30,28,1,1,0.0,1.9
129,University of Colorado - Colorado Springs,12,21,27,2,1,0.0,1.9
129,University of Nevada - Reno,18,21,29,2,1,0.0,1.9
129,University of North Carolina - Charlotte,20,39,29,3,0,2.1,1.9
129,University of Oklahoma,15,38,39,2,0,2.0,1.9
129,University of Texas - El Paso,15,25,25,2,1,0.0,1.9
138,Oregon Health and Science University,8,35,37,1,0,2.2,1.8
138,University of Cincinnati,20,28,24,1,1,2.0,1.8
138,University of Denver,8,47,29,1,0,0.0,1.8
138,University of Louisiana - Lafayette,22,15,23,3,1,0.0,1.8
138,University of Louisville,15,21,14,3,1,0.0,1.8
138,University of North Texas,27,37,26,2,0,0.0,1.8
138,University of Wisconsin - Milwaukee,12,36,32,1,0,0.0,1.8
138,Utah State University,14,30,24,3,0,0.0,1.8
146,Auburn University,17,22,21,1,0,2.2,1.7
146,Florida Institute of Technology,20,17,13,1,1,0.0,1.7
146,Kent State University,19,11,11,2,1,0.0,1.7
146,Texas Tech University,17,14,20,1,1,0.0,1.7
146,University of Alabama - Huntsville,16,24,24,1,0,0.0,1.7
146,University of Arkansas - Little Rock,8,14,16,1,1,0.0,1.7
146,University of New Orleans,11,26,20,1,0,0.0,1.7
153,Mississippi State University,17,18,19,1,0,0.0,1.6
153,Montana State University,9,30,28,0,0,0.0,1.6
153,Southern Methodist University,12,16,12,2,0,2.0,1.6
153,University of Mississippi,8,18,11,1,0,0.0,1.6
153,University of Missouri - Kansas City,19,22,17,1,0,0.0,1.6
153,University of Wyoming,6,20,19,1,0,0.0,1.6
153,Western Michigan University,13,19,11,1,0,0.0,1.6
160,Air Force Institute of Technology,12,19,19,0,0,0.0,1.5
160,Michigan Technological University,16,18,18,0,0,0.0,1.5
160,North Dakota State University,7,18,15,0,0,0.0,1.5
160,Towson University,28,10,12,1,0,0.0,1.5
160,University of Idaho,13,19,11,0,0,0.0,1.5
160,University of Southern Mississippi,13,7,10,2,0,0.0,1.5
166,New Mexico Institute of Mining & Tech,7,11,11,0,0,0.0,1.4
166,Nova Southeastern University,26,1,5,1,1,0.0,1.4
166,Oklahoma State University,12,17,12,0,0,0.0,1.4
166,University of Colorado - Denver,10,8,12,0,0,0.0,1.4
166,University of Nebraska - Omaha,17,13,9,0,0,0.0,1.4
171,Louisiana Tech University,6,7,5,0,0,0.0,1.3
172,Indiana State University,7,0,2,0,0,0.0,1.1
172,LIU Post,4,0,1,0,0,0.0,1.1
)fixture";
    // Raw literal opens with a newline before the header; skip it.
    return csv.substr(1);
}

} // namespace citerank
