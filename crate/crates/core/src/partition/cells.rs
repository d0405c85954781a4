//! The cell taxonomy: every named vertex class with its parent.

use std::fmt;

macro_rules! cells {
    ($( $var:ident = $name:literal $(< $parent:ident)? ;)*) => {
        /// A partition cell. Top-level cells sit directly under a layer
        /// `S_{i,j}`; the rest refine exactly one parent.
        #[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum Cell { $($var,)* }

        impl Cell {
            pub const ALL: &'static [Cell] = &[$(Cell::$var,)*];

            pub fn name(self) -> &'static str {
                match self { $(Cell::$var => $name,)* }
            }

            pub fn parent(self) -> Option<Cell> {
                match self { $(Cell::$var => cells!(@parent $($parent)?),)* }
            }
        }
    };
    (@parent $p:ident) => { Some(Cell::$p) };
    (@parent) => { None };
}

cells! {
    U = "u";
    V = "v";
    S22 = "S22";
    A = "A";
    Ap = "A'";
    B = "B";
    Bp = "B'";
    I = "I";
    Ip = "I'";
    J = "J";
    Jp = "J'";
    X = "X";
    Xp = "X'";
    K = "K";
    Kp = "K'";
    L = "L";
    Lp = "L'";
    M = "M";
    Mp = "M'";

    A1 = "A1" < A;
    A2 = "A2" < A;
    A3 = "A3" < A;
    A4 = "A4" < A;
    A5 = "A5" < A;
    A6 = "A6" < A;
    A7 = "A7" < A;
    A8 = "A8" < A;
    A9 = "A9" < A;
    A91 = "A91" < A9;
    A92 = "A92" < A9;
    A93 = "A93" < A9;
    A94 = "A94" < A9;
    A95 = "A95" < A9;
    Ap1 = "A'1" < Ap;
    Ap2 = "A'2" < Ap;
    Ap3 = "A'3" < Ap;

    B1 = "B1" < B;
    B2 = "B2" < B;
    B3 = "B3" < B;
    B4 = "B4" < B;
    B5 = "B5" < B;
    B6 = "B6" < B;
    B7 = "B7" < B;
    B8 = "B8" < B;
    B9 = "B9" < B;
    B10 = "B10" < B;
    B10a = "B10(1)" < B10;
    B10b = "B10(2)" < B10;
    Bp1 = "B'1" < Bp;
    Bp2 = "B'2" < Bp;
    Bp3 = "B'3" < Bp;

    I1 = "I1" < I;
    I2 = "I2" < I;
    I3 = "I3" < I;
    I4 = "I4" < I;
    I5 = "I5" < I;
    I6 = "I6" < I;
    I61 = "I61" < I6;
    I62 = "I62" < I6;
    I61a = "I61(1)" < I61;
    I61b = "I61(2)" < I61;
    I61c = "I61(3)" < I61;
    I61ba = "I61(21)" < I61b;
    I61bb = "I61(22)" < I61b;
    I62a = "I62(1)" < I62;
    I62b = "I62(2)" < I62;
    I62c = "I62(3)" < I62;
    I62ca = "I62(31)" < I62c;
    I62cb = "I62(32)" < I62c;
    I62cc = "I62(33)" < I62c;

    Ip1 = "I'1" < Ip;
    Ip2 = "I'2" < Ip;
    Ip3 = "I'3" < Ip;
    Ip4 = "I'4" < Ip;
    Ip5 = "I'5" < Ip;
    Ip6 = "I'6" < Ip;
    Ip7 = "I'7" < Ip;
    Ip8 = "I'8" < Ip;
    Ip41 = "I'41" < Ip4;
    Ip42 = "I'42" < Ip4;
    Ip51 = "I'51" < Ip5;
    Ip52 = "I'52" < Ip5;
    Ip61 = "I'61" < Ip6;
    Ip62 = "I'62" < Ip6;
    Ip71 = "I'71" < Ip7;
    Ip72 = "I'72" < Ip7;
    Ip73 = "I'73" < Ip7;
    Ip81 = "I'81" < Ip8;
    Ip82 = "I'82" < Ip8;
    Ip83 = "I'83" < Ip8;

    J1 = "J1" < J;
    J2 = "J2" < J;
    J3 = "J3" < J;
    J4 = "J4" < J;
    J5 = "J5" < J;
    J6 = "J6" < J;

    Jp1 = "J'1" < Jp;
    Jp2 = "J'2" < Jp;
    Jp3 = "J'3" < Jp;
    Jp4 = "J'4" < Jp;
    Jp5 = "J'5" < Jp;
    Jp6 = "J'6" < Jp;
    Jp31 = "J'31" < Jp3;
    Jp32 = "J'32" < Jp3;
    Jp41 = "J'41" < Jp4;
    Jp42 = "J'42" < Jp4;
    Jp51 = "J'51" < Jp5;
    Jp52 = "J'52" < Jp5;
    Jp53 = "J'53" < Jp5;
    Jp61 = "J'61" < Jp6;
    Jp62 = "J'62" < Jp6;
    Jp63 = "J'63" < Jp6;

    X0 = "X(0)" < X;
    XMulti = "X(2)" < X;
    XJ = "X(J)" < X;
    XI = "X(I)" < X;
    XKM = "X(KM)" < X;
    XL = "X(L)" < X;
    Xp1 = "X'1" < Xp;
    Xp2 = "X'2" < Xp;
    Xp3 = "X'3" < Xp;
    Xp4 = "X'4" < Xp;
    Xp5 = "X'5" < Xp;

    K1 = "K1" < K;
    K2 = "K2" < K;
    K3 = "K3" < K;
    Kp1 = "K'1" < Kp;
    Kp2 = "K'2" < Kp;
    Kp3 = "K'3" < Kp;
    Kp4 = "K'4" < Kp;
    Kp5 = "K'5" < Kp;
    Kp6 = "K'6" < Kp;
    Kp7 = "K'7" < Kp;
    Kp8 = "K'8" < Kp;
    Kp9 = "K'9" < Kp;
    Kp10 = "K'10" < Kp;
    Kp21 = "K'21" < Kp2;
    Kp22 = "K'22" < Kp2;
    Kp23 = "K'23" < Kp2;
    Kp81 = "K'81" < Kp8;
    Kp82 = "K'82" < Kp8;
    Kp83 = "K'83" < Kp8;
    Kp91 = "K'91" < Kp9;
    Kp92 = "K'92" < Kp9;
    Kp93 = "K'93" < Kp9;

    L1 = "L1" < L;
    L2 = "L2" < L;
    L3 = "L3" < L;
    L4 = "L4" < L;
    Lp1 = "L'1" < Lp;
    Lp2 = "L'2" < Lp;
    Lp3 = "L'3" < Lp;
    Lp4 = "L'4" < Lp;
    Lp5 = "L'5" < Lp;
    Lp11 = "L'11" < Lp1;
    Lp12 = "L'12" < Lp1;
    Lp13 = "L'13" < Lp1;
    Lp41 = "L'41" < Lp4;
    Lp42 = "L'42" < Lp4;
    Lp43 = "L'43" < Lp4;
    Lp51 = "L'51" < Lp5;
    Lp52 = "L'52" < Lp5;
    Lp53 = "L'53" < Lp5;
    Lp54 = "L'54" < Lp5;

    M1 = "M1" < M;
    M2 = "M2" < M;
    M3 = "M3" < M;
    M31 = "M31" < M3;
    M32 = "M32" < M3;
    Mp1 = "M'1" < Mp;
    Mp2 = "M'2" < Mp;
    Mp21 = "M'21" < Mp2;
    Mp22 = "M'22" < Mp2;
    Mp23 = "M'23" < Mp2;
}

impl Cell {
    /// Children in definition order.
    pub fn children(self) -> Vec<Cell> {
        Cell::ALL.iter().copied().filter(|c| c.parent() == Some(self)).collect()
    }

    pub fn is_top(self) -> bool {
        self.parent().is_none()
    }

    /// Looks a cell up by its printed name.
    pub fn from_name(name: &str) -> Option<Cell> {
        Cell::ALL.iter().copied().find(|c| c.name() == name)
    }

    /// Top-level ancestor.
    pub fn root(self) -> Cell {
        let mut c = self;
        while let Some(p) = c.parent() {
            c = p;
        }
        c
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
