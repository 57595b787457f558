"""Closed-form area generating functions, transcribed as text.

Each entry is ``(N, D)`` with the generating function ``q * N / D``.  The
strings are kept exactly as printed so a transcription slip can be found by
eye; :func:`cheesyhex.series.parse_polynomial` turns them into coefficients.
"""

CLOSED_FORMS = {
    1: (
        "1-6q+11q^2-6q^3+2q^4",
        "1-9q+27q^2-32q^3+13q^4-3q^5-q^6",
    ),
    2: (
        "1-13q+70q^2-202q^3+336q^4-317q^5+143q^6+18q^7-84q^8"
        "+11q^9+227q^{10}-375q^{11}+267q^{12}-165q^{13}+134q^{14}-21q^{15}+4q^{16}"
        "-124q^{17}+98q^{18}-12q^{19}+28q^{20}-16q^{21}",
        "1-16q+107q^2-391q^3+850q^4-1108q^5+797q^6-169q^7-266q^8"
        "+317q^9+159q^{10}-913q^{11}+1081q^{12}-672q^{13}+446q^{14}-268q^{15}"
        "+7q^{16}-158q^{17}+404q^{18}-222q^{19}+42q^{20}-70q^{21}+34q^{22}",
    ),
    3: (
        "1-24q+264q^2-1766q^3+8033q^4-26297q^5+63860q^6"
        "-116445q^7+157849q^8-148533q^9+61825q^{10}+99443q^{11}"
        "-308464q^{12}+519182q^{13}-655900q^{14}+618461q^{15}-344081q^{16}"
        "-101610q^{17}+519331q^{18}-707969q^{19}+601249q^{20}-284943q^{21}"
        "-68043q^{22}+297023q^{23}-346370q^{24}+265550q^{25}-140577q^{26}"
        "+31503q^{27}+64681q^{28}-166424q^{29}+234520q^{30}-218182q^{31}"
        "+130432q^{32}-29144q^{33}-33391q^{34}+38482q^{35}-12237q^{36}-2050q^{37}"
        "-6144q^{38}+18593q^{39}-21514q^{40}+11634q^{41}+3351q^{42}-13907q^{43}"
        "+12096q^{44}+2302q^{45}-8825q^{46}+570q^{47}+4681q^{48}-1695q^{49}"
        "-1519q^{50}+1290q^{51}+64q^{52}-224q^{53}+44q^{54}-12q^{55}",
        "1-27q+334q^2-2515q^3+12906q^4-47836q^5+132248q^6"
        "-276956q^7+438796q^8-508406q^9+365771q^{10}+36865q^{11}"
        "-648120q^{12}+1344653q^{13}-1932847q^{14}+2126787q^{15}-1632701q^{16}"
        "+408884q^{17}+1117382q^{18}-2223607q^{19}+2392085q^{20}-1636807q^{21}"
        "+418146q^{22}+665251q^{23}-1211688q^{24}+1191386q^{25}-838060q^{26}"
        "+416174q^{27}-41907q^{28}-323733q^{29}+664097q^{30}-810808q^{31}"
        "+657803q^{32}-319442q^{33}+14159q^{34}+120746q^{35}-95202q^{36}"
        "+22341q^{37}-7930q^{38}+47294q^{39}-74720q^{40}+62640q^{41}-19120q^{42}"
        "-28394q^{43}+46822q^{44}-21864q^{45}-18416q^{46}+20930q^{47}+6617q^{48}"
        "-14093q^{49}+982q^{50}+5867q^{51}-2682q^{52}-642q^{53}+608q^{54}"
        "-88q^{55}+12q^{56}",
    ),
}
